package com.example.card;

import android.app.Activity;
import android.widget.TextView;

class Card extends Activity {
    private TextView heading;
    private TextView caption;

    void decorate() {
        heading.setTextAppearance(this, R.style.Heading);
        caption.setTextAppearance(this, R.style.Caption);
    }
}
