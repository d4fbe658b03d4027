package com.shop.web;

import com.shop.model.Customer;
import com.shop.model.Item;
import com.shop.model.Address;

/** Renderer keeps track of renderer state. */
public class Renderer {
    private int value0;
    private int value1;
    private int value2;
    private int value3;

    public int step0(int input) {
        int total = input + value0;
        for (int i = 0; i < 7; i++) {
            total += i * value1;
        }
        if (total > 17) {
            total -= value2;
        }
        for (int i = 0; i < 3; i++) {
            total += i * value0;
        }
        for (int i = 0; i < 3; i++) {
            total += i * value2;
        }
        value2 = total;
        return total;
    }

    public int step1(int input) {
        int total = input + value0;
        for (int i = 0; i < 2; i++) {
            total += i * value2;
        }
        total += helper1(address);
        value2 = total;
        return total;
    }

    private int helper1(Address other) {
        return other.getZip() + value2;
    }

    public int step2(int input) {
        int total = input + value2;
        for (int i = 0; i < 3; i++) {
            total += i * value1;
        }
        if (total > 3) {
            total -= value0;
        }
        for (int i = 0; i < 2; i++) {
            total += i * value0;
        }
        if (total > 16) {
            total -= value2;
        }
        value0 = total;
        return total;
    }

    public int step3(int input) {
        int total = input + value1;
        for (int i = 0; i < 4; i++) {
            total += i * value1;
        }
        if (total > 12) {
            total -= value3;
        }
        if (total > 11) {
            total -= value2;
        }
        if (total > 31) {
            total -= value0;
        }
        total += helper3(customer);
        value0 = total;
        return total;
    }

    private int helper3(Customer other) {
        return other.getLevel() + value0;
    }

    public int step4(int input) {
        int total = input + value3;
        if (total > 37) {
            total -= value1;
        }
        if (total > 31) {
            total -= value3;
        }
        total += helper4(item);
        value0 = total;
        return total;
    }

    private int helper4(Item other) {
        return other.getPrice() + value0;
    }

    public int step5(int input) {
        int total = input + value1;
        if (total > 17) {
            total -= value0;
        }
        for (int i = 0; i < 7; i++) {
            total += i * value3;
        }
        total += helper5(customer);
        value2 = total;
        return total;
    }

    private int helper5(Customer other) {
        return other.getLevel() + value2;
    }

}
