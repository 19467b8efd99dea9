package com.example.toolbar;

import android.content.res.Resources;
import android.graphics.drawable.Drawable;
import android.os.Build;

public class Toolbar {
    private Drawable navIcon;

    public void setup(Resources resources) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.LOLLIPOP) {
            navIcon = resources.getDrawable(R.drawable.ic_back, defaultTheme());
        } else {
            navIcon = resources.getDrawable(R.drawable.ic_back);
        }
    }

    private static Resources.Theme defaultTheme() {
        return ThemeHolder.theme;
    }
}

class ThemeHolder {
    static Resources.Theme theme;
}
