package com.example.schedule;

import android.widget.TimePicker;

class Schedule {
    int start;
    int end;

    void capture(TimePicker from, TimePicker to) {
        start = from.getCurrentMinute();
        end = to.getCurrentMinute();
    }
}
