package com.example.work;

import android.widget.TimePicker;
import android.os.Build;

class Shift {
    int startHour(TimePicker start) {
        if (Build.VERSION.SDK_INT < Build.VERSION_CODES.M) {
            return start.getCurrentHour();
        } else {
            return start.getHour();
        }
    }
}
