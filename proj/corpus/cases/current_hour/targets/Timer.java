package com.example.timer;

import android.widget.TimePicker;

class Timer {
    int a(TimePicker t) {
        return t.getCurrentHour();
    }

    int b(TimePicker t) {
        return t.getCurrentHour();
    }

    int c(TimePicker t) {
        return t.getCurrentHour();
    }
}
