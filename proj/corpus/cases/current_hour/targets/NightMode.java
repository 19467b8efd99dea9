package com.example.theme;

import android.widget.TimePicker;

public class NightMode {
    private TimePicker picker;

    public int hour() {
        if (picker == null) {
            return 0;
        }
        return picker.getCurrentHour();
    }

    public int nextHour() {
        return (picker.getCurrentHour() + 1) % 24;
    }
}
