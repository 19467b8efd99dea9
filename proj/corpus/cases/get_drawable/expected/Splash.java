package com.example.splash;

import android.content.res.Resources;
import android.graphics.drawable.Drawable;
import android.widget.ImageView;

class Splash {
    void show(Resources res, ImageView view) {
        view.setImageDrawable(res.getDrawable(R.drawable.logo));
    }
}
