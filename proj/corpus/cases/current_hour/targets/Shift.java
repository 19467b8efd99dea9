package com.example.work;

import android.widget.TimePicker;

class Shift {
    int startHour(TimePicker start) {
        return start.getCurrentHour();
    }
}
