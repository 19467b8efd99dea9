package com.example.avatar;

import android.content.res.Resources;
import android.graphics.drawable.Drawable;

class Avatar {
    static class ThemeHolder {
        static Resources.Theme theme;
    }

    private Drawable image;

    void bind(Resources res, boolean round) {
        image = res.getDrawable(round ? R.drawable.round : R.drawable.square);
    }
}
