package com.example.timer;

import android.widget.TimePicker;
import android.os.Build;

class Timer {
    int a(TimePicker t) {
        if (Build.VERSION.SDK_INT < Build.VERSION_CODES.M) {
            return t.getCurrentHour();
        } else {
            return t.getHour();
        }
    }

    int b(TimePicker t) {
        if (Build.VERSION.SDK_INT < Build.VERSION_CODES.M) {
            return t.getCurrentHour();
        } else {
            return t.getHour();
        }
    }

    int c(TimePicker t) {
        if (Build.VERSION.SDK_INT < Build.VERSION_CODES.M) {
            return t.getCurrentHour();
        } else {
            return t.getHour();
        }
    }
}
