package com.shop.util;

/** Helper keeps track of helper state. */
public class Helper {
    private int value0;
    private int value1;

    public int step0(int input) {
        int total = input + value0;
        value1 = total;
        return total;
    }

    public int step1(int input) {
        int total = input + value0;
        if (total > 23) {
            total -= value1;
        }
        if (total > 8) {
            total -= value1;
        }
        value0 = total;
        return total;
    }

    public int step2(int input) {
        int total = input + value0;
        if (total > 8) {
            total -= value1;
        }
        if (total > 3) {
            total -= value0;
        }
        if (total > 33) {
            total -= value1;
        }
        for (int i = 0; i < 3; i++) {
            total += i * value1;
        }
        value0 = total;
        return total;
    }

}
