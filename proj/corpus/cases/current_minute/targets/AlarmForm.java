package com.example.alarm;

import android.widget.TimePicker;

public class AlarmForm {
    private TimePicker p;
    private int x;

    public void save() {
        x = p.getCurrentMinute();
        store(x);
    }

    private void store(int minute) {
    }
}
