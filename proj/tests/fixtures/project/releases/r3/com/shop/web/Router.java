package com.shop.web;

import com.shop.model.Customer;
import com.shop.model.Item;
import com.shop.model.Address;

/** Router keeps track of router state. */
public class Router {
    private int value0;
    private int value1;
    private int value2;

    public int step0(int input) {
        int total = input + value1;
        for (int i = 0; i < 3; i++) {
            total += i * value0;
        }
        for (int i = 0; i < 2; i++) {
            total += i * value1;
        }
        value2 = total;
        return total;
    }

    public int step1(int input) {
        int total = input + value2;
        if (total > 26) {
            total -= value1;
        }
        value0 = total;
        return total;
    }

    public int step2(int input) {
        int total = input + value2;
        if (total > 26) {
            total -= value2;
        }
        for (int i = 0; i < 5; i++) {
            total += i * value0;
        }
        for (int i = 0; i < 8; i++) {
            total += i * value0;
        }
        value0 = total;
        return total;
    }

    public int step3(int input) {
        int total = input + value1;
        for (int i = 0; i < 7; i++) {
            total += i * value2;
        }
        if (total > 46) {
            total -= value0;
        }
        for (int i = 0; i < 3; i++) {
            total += i * value1;
        }
        if (total > 23) {
            total -= value1;
        }
        value0 = total;
        return total;
    }

    public int step4(int input) {
        int total = input + value0;
        total += helper4(item);
        value2 = total;
        return total;
    }

    private int helper4(Item other) {
        return other.getPrice() + value2;
    }

}
