package com.example.card;

import android.app.Activity;
import android.widget.TextView;
import android.os.Build;

class Card extends Activity {
    private TextView heading;
    private TextView caption;

    void decorate() {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.M) {
            heading.setTextAppearance(R.style.Heading);
        } else {
            heading.setTextAppearance(this, R.style.Heading);
        }
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.M) {
            caption.setTextAppearance(R.style.Caption);
        } else {
            caption.setTextAppearance(this, R.style.Caption);
        }
    }
}
