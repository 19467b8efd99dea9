package com.example.game;

import android.os.Vibrator;

class GameFeedback {
    private Vibrator motor;
    private long base = 40;

    void hit(int strength) {
        // Scale with the hit strength.
        motor.vibrate(base * strength);
    }
}
