package com.example.dialogs;

import android.text.Html;
import android.widget.TextView;
import android.os.Build;

final class Dialogs {
    private Dialogs() {}

    static void warn(TextView view, String message) {
        if (message != null) {
            if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.N) {
                view.setText(Html.fromHtml(message, Html.FROM_HTML_MODE_LEGACY));
            } else {
                view.setText(Html.fromHtml(message));
            }
        } else {
            view.setText("");
        }
    }
}
