package com.example.icons;

import android.content.res.Resources;
import android.graphics.drawable.Drawable;
import android.os.Build;

public class IconLoader {
    static class ThemeHolder {
        static Resources.Theme theme;
    }

    private static Resources.Theme defaultTheme() {
        return ThemeHolder.theme;
    }

    public Drawable load(Resources res, int id) {
        Drawable icon;
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.LOLLIPOP) {
            icon = res.getDrawable(id, defaultTheme());
        } else {
            icon = res.getDrawable(id);
        }
        return icon;
    }
}
