package com.example.schedule;

import android.widget.TimePicker;

class Schedule {
    int start;
    int end;

    void capture(TimePicker from, TimePicker to) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            start = from.getMinute();
        } else {
            start = from.getCurrentMinute();
        }
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            end = to.getMinute();
        } else {
            end = to.getCurrentMinute();
        }
    }
}
