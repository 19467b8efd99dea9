package com.example.tabs;

import android.content.Context;
import android.os.Build;
import android.widget.TextView;

class Tabs {
    void select(Context context, TextView tab) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.M) {
            tab.setTextAppearance(R.style.Selected);
        } else {
            tab.setTextAppearance(context, R.style.Selected);
        }
    }
}
