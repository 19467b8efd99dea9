package com.example.theme;

import android.widget.TimePicker;
import android.os.Build;

public class NightMode {
    private TimePicker picker;

    public int hour() {
        if (picker == null) {
            return 0;
        }
        if (Build.VERSION.SDK_INT < Build.VERSION_CODES.M) {
            return picker.getCurrentHour();
        } else {
            return picker.getHour();
        }
    }

    public int nextHour() {
        return (picker.getCurrentHour() + 1) % 24;
    }
}
