package com.example.clock;

import android.widget.TimePicker;

class Clock {
    void show(TimePicker picker) {
        int total;
        total = picker.getCurrentMinute();
        System.out.println(total);
        int copy = picker.getCurrentMinute();
        System.out.println(copy);
    }
}
