import android.widget.TimePicker;

class TimeReader {
    int read(TimePicker picker) {
        int minutes;
        if (android.os.Build.VERSION.SDK_INT >= 
                android.os.Build.VERSION_CODES.M) {
            minutes = picker.getMinute();
        } else {
            minutes = picker.getCurrentMinute();
        }
        return minutes;
    }
}
