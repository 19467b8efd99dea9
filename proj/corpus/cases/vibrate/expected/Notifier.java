package com.example.notify;

import android.content.Context;
import android.os.Vibrator;
import android.os.VibrationEffect;

public class Notifier {
    private final Vibrator vibrator;

    public Notifier(Context context) {
        vibrator = (Vibrator) context.getSystemService(Context.VIBRATOR_SERVICE);
    }

    public void onMessage() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            vibrator.vibrate(VibrationEffect.createOneShot(50, 175));
        } else {
            vibrator.vibrate(200);
        }
    }

    public void onCall(boolean silent) {
        if (!silent) {
            if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
                vibrator.vibrate(VibrationEffect.createOneShot(50, 175));
            } else {
                vibrator.vibrate(1000);
            }
        }
    }

    public void onAlarm() {
        for (int i = 0; i < 3; i++) {
            vibrator.vibrate(400);
        }
    }
}
