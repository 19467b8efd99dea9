package com.example.buzz;

import android.os.Vibrator;

public class Buzzer {
    private Vibrator MyVibrator;

    public void Once(long milliseconds) {
        if (MyVibrator.hasVibrator()) {
            MyVibrator.vibrate(milliseconds);
        }
    }
}
