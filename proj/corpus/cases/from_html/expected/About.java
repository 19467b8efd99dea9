package com.example.about;

import android.text.Html;
import android.widget.TextView;
import android.os.Build;

public class About {
    private TextView body;

    public void bind(String html) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.N) {
            body.setText(Html.fromHtml(html, Html.FROM_HTML_MODE_LEGACY));
        } else {
            body.setText(Html.fromHtml(html));
        }
    }
}
