package com.example.labels;

import android.content.Context;
import android.widget.TextView;
import android.os.Build;

class Labels {
    void apply(Context c, TextView label, boolean bold) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.M) {
            label.setTextAppearance(bold ? R.style.Bold : R.style.Regular);
        } else {
            label.setTextAppearance(c, bold ? R.style.Bold : R.style.Regular);
        }
    }

    void reset(TextView label) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.M) {
            label.setTextAppearance(R.style.Regular);
        } else {
            label.setTextAppearance(label.getContext(), R.style.Regular);
        }
    }
}
