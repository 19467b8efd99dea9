package com.example.changelog;

import android.content.Context;
import android.text.Html;
import android.widget.TextView;

class Changelog {
    void show(Context context, TextView title, TextView notes) {
        title.setText(Html.fromHtml(context.getString(R.string.changelog_title)));
        notes.setText(Html.fromHtml("<b>" + version() + "</b>"));
    }

    private String version() {
        return "2.1";
    }
}
