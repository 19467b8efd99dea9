package com.example.legacy;

import android.os.Build;
import android.widget.TimePicker;

class Legacy {
    int hour(TimePicker t) {
        if (Build.VERSION.SDK_INT >= 23) {
            return t.getHour();
        }
        if (Build.VERSION.SDK_INT < Build.VERSION_CODES.M) {
            return t.getCurrentHour();
        } else {
            return t.getHour();
        }
    }

    int plain(TimePicker t) {
        if (Build.VERSION.SDK_INT < Build.VERSION_CODES.M) {
            return t.getCurrentHour();
        } else {
            return t.getHour();
        }
    }
}
