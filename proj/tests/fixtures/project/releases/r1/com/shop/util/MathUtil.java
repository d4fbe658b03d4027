package com.shop.util;

import com.shop.model.Customer;
import com.shop.model.Item;
import com.shop.model.Address;

/** MathUtil keeps track of mathutil state. */
public class MathUtil {
    private int value0;
    private int value1;
    private int value2;

    public int step0(int input) {
        int total = input + value1;
        for (int i = 0; i < 9; i++) {
            total += i * value2;
        }
        if (total > 32) {
            total -= value0;
        }
        if (total > 30) {
            total -= value0;
        }
        total += helper0(address);
        value2 = total;
        return total;
    }

    private int helper0(Address other) {
        return other.getZip() + value2;
    }

    public int step1(int input) {
        int total = input + value2;
        for (int i = 0; i < 3; i++) {
            total += i * value1;
        }
        total += helper1(customer);
        value2 = total;
        return total;
    }

    private int helper1(Customer other) {
        return other.getLevel() + value2;
    }

    public int step2(int input) {
        int total = input + value2;
        for (int i = 0; i < 5; i++) {
            total += i * value1;
        }
        total += helper2(customer);
        value0 = total;
        return total;
    }

    private int helper2(Customer other) {
        return other.getLevel() + value0;
    }

    public int step3(int input) {
        int total = input + value1;
        value0 = total;
        return total;
    }

}
