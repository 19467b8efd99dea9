package com.example.style;

import android.content.Context;
import android.os.Build;
import android.widget.TextView;

class Styler {
    void apply(Context context, TextView label, int style) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.M) {
            label.setTextAppearance(style);
        } else {
            label.setTextAppearance(context, style);
        }
    }
}
