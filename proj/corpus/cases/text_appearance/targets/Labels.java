package com.example.labels;

import android.content.Context;
import android.widget.TextView;

class Labels {
    void apply(Context c, TextView label, boolean bold) {
        label.setTextAppearance(c, bold ? R.style.Bold : R.style.Regular);
    }

    void reset(TextView label) {
        label.setTextAppearance(label.getContext(), R.style.Regular);
    }
}
