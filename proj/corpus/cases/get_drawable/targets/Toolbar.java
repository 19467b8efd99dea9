package com.example.toolbar;

import android.content.res.Resources;
import android.graphics.drawable.Drawable;

public class Toolbar {
    private Drawable navIcon;

    public void setup(Resources resources) {
        navIcon = resources.getDrawable(R.drawable.ic_back);
    }
}
