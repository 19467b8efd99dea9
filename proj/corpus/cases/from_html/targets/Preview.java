package com.example.preview;

import android.text.Html;
import android.text.Spanned;
import android.widget.TextView;

class Preview {
    Spanned parse(String html) {
        Spanned spanned = Html.fromHtml(html);
        return spanned;
    }

    void show(TextView view, String html) {
        view.setText(Html.fromHtml(html));
    }
}
