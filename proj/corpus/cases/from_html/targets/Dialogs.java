package com.example.dialogs;

import android.text.Html;
import android.widget.TextView;

final class Dialogs {
    private Dialogs() {}

    static void warn(TextView view, String message) {
        if (message != null) {
            view.setText(Html.fromHtml(message));
        } else {
            view.setText("");
        }
    }
}
