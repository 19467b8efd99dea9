private static final int DURATION = 50;
private static final int AMPLITUDE = 175;
public static void itemActivated(Context context) {
    long milliseconds = DURATION;
    if (android.os.Build.VERSION.SDK_INT >= 
            android.os.Build.VERSION_CODES.O) {
    	int amplitude = AMPLITUDE;
    	VibrationEffect effect = VibrationEffect.
    	        createOneShot(milliseconds, amplitude);
        vibrator.vibrate(effect);
    } else {
        vibrator.vibrate(milliseconds);
    }
}
