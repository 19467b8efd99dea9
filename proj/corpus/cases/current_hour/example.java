import android.os.Build;
import android.widget.TimePicker;

public class HourSource {
    private TimePicker timePicker;

    public int hour() {
        if (Build.VERSION.SDK_INT < Build.VERSION_CODES.M) {
            return timePicker.getCurrentHour();
        } else {
            return timePicker.getHour();
        }
    }
}
