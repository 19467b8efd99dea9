package com.example.preview;

import android.text.Html;
import android.text.Spanned;
import android.widget.TextView;
import android.os.Build;

class Preview {
    Spanned parse(String html) {
        Spanned spanned = Html.fromHtml(html);
        return spanned;
    }

    void show(TextView view, String html) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.N) {
            view.setText(Html.fromHtml(html, Html.FROM_HTML_MODE_LEGACY));
        } else {
            view.setText(Html.fromHtml(html));
        }
    }
}
