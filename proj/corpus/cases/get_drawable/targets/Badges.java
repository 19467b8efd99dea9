package com.example.badges;

import android.content.res.Resources;
import android.graphics.drawable.Drawable;

class Badges {
    private Drawable gold;
    private Drawable silver;

    void load(Resources r) {
        gold = r.getDrawable(R.drawable.gold);
        silver = r.getDrawable(R.drawable.silver);
    }

    private int defaultTheme(int fallback) {
        return fallback;
    }
}
