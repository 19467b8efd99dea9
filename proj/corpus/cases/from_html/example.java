package com.example.render;

import android.os.Build;
import android.text.Html;
import android.widget.TextView;

public class Renderer {
    private static final int LEGACY_FLAGS = Html.FROM_HTML_MODE_LEGACY;

    public void render(TextView view, String markup) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.N) {
            view.setText(Html.fromHtml(markup, LEGACY_FLAGS));
        } else {
            view.setText(Html.fromHtml(markup));
        }
    }
}
