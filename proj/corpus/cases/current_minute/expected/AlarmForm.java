package com.example.alarm;

import android.widget.TimePicker;

public class AlarmForm {
    private TimePicker p;
    private int x;

    public void save() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            x = p.getMinute();
        } else {
            x = p.getCurrentMinute();
        }
        store(x);
    }

    private void store(int minute) {
    }
}
