package com.example.notify;

import android.content.Context;
import android.os.Vibrator;

public class Notifier {
    private final Vibrator vibrator;

    public Notifier(Context context) {
        vibrator = (Vibrator) context.getSystemService(Context.VIBRATOR_SERVICE);
    }

    public void onMessage() {
        vibrator.vibrate(200);
    }

    public void onCall(boolean silent) {
        if (!silent) {
            vibrator.vibrate(1000);
        }
    }

    public void onAlarm() {
        for (int i = 0; i < 3; i++) {
            vibrator.vibrate(400);
        }
    }
}
