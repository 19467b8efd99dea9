package com.example.avatar;

import android.content.res.Resources;
import android.graphics.drawable.Drawable;
import android.os.Build;

class Avatar {
    static class ThemeHolder {
        static Resources.Theme theme;
    }

    private Drawable image;

    void bind(Resources res, boolean round) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.LOLLIPOP) {
            image = res.getDrawable(round ? R.drawable.round : R.drawable.square, defaultTheme());
        } else {
            image = res.getDrawable(round ? R.drawable.round : R.drawable.square);
        }
    }

    private static Resources.Theme defaultTheme() {
        return ThemeHolder.theme;
    }
}
