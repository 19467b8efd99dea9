package com.example.badges;

import android.content.res.Resources;
import android.graphics.drawable.Drawable;
import android.os.Build;

class Badges {
    private Drawable gold;
    private Drawable silver;

    void load(Resources r) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.LOLLIPOP) {
            gold = r.getDrawable(R.drawable.gold, defaultTheme_androevolve());
        } else {
            gold = r.getDrawable(R.drawable.gold);
        }
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.LOLLIPOP) {
            silver = r.getDrawable(R.drawable.silver, defaultTheme_androevolve());
        } else {
            silver = r.getDrawable(R.drawable.silver);
        }
    }

    private int defaultTheme(int fallback) {
        return fallback;
    }

    private static Resources.Theme defaultTheme_androevolve() {
        return ThemeHolder.theme;
    }
}

class ThemeHolder {
    static Resources.Theme theme;
}
