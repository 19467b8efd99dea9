package com.example.legacy;

import android.os.Build;
import android.widget.TimePicker;

class Legacy {
    int hour(TimePicker t) {
        if (Build.VERSION.SDK_INT >= 23) {
            return t.getHour();
        }
        return t.getCurrentHour();
    }

    int plain(TimePicker t) {
        return t.getCurrentHour();
    }
}
