package com.example.clock;

import android.widget.TimePicker;

class Clock {
    void show(TimePicker picker) {
        int total;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            total = picker.getMinute();
        } else {
            total = picker.getCurrentMinute();
        }
        System.out.println(total);
        int copy = picker.getCurrentMinute();
        System.out.println(copy);
    }
}
