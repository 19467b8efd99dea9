package com.example.reminder;

import android.widget.TimePicker;

class Reminder {
    private final TimePicker picker;
    private int minute;

    Reminder(TimePicker picker) {
        this.picker = picker;
    }

    String describe() {
        return "at :" + picker.getCurrentMinute();
    }

    void refresh() {
        if (picker.isEnabled()) {
            if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
                minute = picker.getMinute();
            } else {
                minute = picker.getCurrentMinute();
            }
        }
    }
}
