package com.example.buzz;

import android.os.Vibrator;
import android.os.VibrationEffect;

public class Buzzer {
    private Vibrator MyVibrator;

    public void Once(long milliseconds) {
        if (MyVibrator.hasVibrator()) {
            if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
                MyVibrator.vibrate(VibrationEffect.createOneShot(50, 175));
            } else {
                MyVibrator.vibrate(milliseconds);
            }
        }
    }
}
