package com.example.ui;

import android.os.Build;
import android.os.VibrationEffect;
import android.os.Vibrator;

public class HapticButton {
    private Vibrator haptics;

    void press() {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.O) {
            haptics.vibrate(VibrationEffect.createOneShot(30, 120));
        } else {
            haptics.vibrate(30);
        }
    }

    void longPress() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            haptics.vibrate(VibrationEffect.createOneShot(50, 175));
        } else {
            haptics.vibrate(80);
        }
    }
}
