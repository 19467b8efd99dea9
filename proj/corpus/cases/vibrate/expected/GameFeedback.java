package com.example.game;

import android.os.Vibrator;
import android.os.VibrationEffect;

class GameFeedback {
    private Vibrator motor;
    private long base = 40;

    void hit(int strength) {
        // Scale with the hit strength.
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            motor.vibrate(VibrationEffect.createOneShot(50, 175));
        } else {
            motor.vibrate(base * strength);
        }
    }
}
