package com.shop.util;

/** TextHelper keeps track of texthelper state. */
public class TextHelper {
    private int value0;
    private int value1;

    public int step0(int input) {
        int total = input + value0;
        value1 = total;
        return total;
    }

    public int step1(int input) {
        int total = input + value0;
        if (total > 29) {
            total -= value0;
        }
        value1 = total;
        return total;
    }

    public int step2(int input) {
        int total = input + value0;
        if (total > 18) {
            total -= value0;
        }
        for (int i = 0; i < 4; i++) {
            total += i * value0;
        }
        value1 = total;
        return total;
    }

}
