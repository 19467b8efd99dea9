package com.example.changelog;

import android.content.Context;
import android.text.Html;
import android.widget.TextView;
import android.os.Build;

class Changelog {
    void show(Context context, TextView title, TextView notes) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.N) {
            title.setText(Html.fromHtml(context.getString(R.string.changelog_title), Html.FROM_HTML_MODE_LEGACY));
        } else {
            title.setText(Html.fromHtml(context.getString(R.string.changelog_title)));
        }
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.N) {
            notes.setText(Html.fromHtml("<b>" + version() + "</b>", Html.FROM_HTML_MODE_LEGACY));
        } else {
            notes.setText(Html.fromHtml("<b>" + version() + "</b>"));
        }
    }

    private String version() {
        return "2.1";
    }
}
