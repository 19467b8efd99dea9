class W {
    void m() {
        v.vibrate(5);
    }
}
