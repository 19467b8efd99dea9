package com.example.about;

import android.text.Html;
import android.widget.TextView;

public class About {
    private TextView body;

    public void bind(String html) {
        body.setText(Html.fromHtml(html));
    }
}
