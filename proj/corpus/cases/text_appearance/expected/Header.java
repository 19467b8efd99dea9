package com.example.header;

import android.content.Context;
import android.widget.TextView;
import android.os.Build;

public class Header {
    private TextView title;

    public void style(Context ctx) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.M) {
            title.setTextAppearance(R.style.TitleText);
        } else {
            title.setTextAppearance(ctx, R.style.TitleText);
        }
    }
}
