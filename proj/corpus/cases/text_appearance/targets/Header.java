package com.example.header;

import android.content.Context;
import android.widget.TextView;

public class Header {
    private TextView title;

    public void style(Context ctx) {
        title.setTextAppearance(ctx, R.style.TitleText);
    }
}
