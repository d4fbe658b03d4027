package com.shop.data;

import com.shop.model.Customer;
import com.shop.model.Item;
import com.shop.model.Address;

/** Mapper keeps track of mapper state. */
public class Mapper {
    private int value0;
    private int value1;

    public int step0(int input) {
        int total = input + value0;
        total += helper0(address);
        value1 = total;
        return total;
    }

    private int helper0(Address other) {
        return other.getZip() + value1;
    }

    public int step1(int input) {
        int total = input + value1;
        if (total > 8) {
            total -= value1;
        }
        if (total > 33) {
            total -= value0;
        }
        value1 = total;
        return total;
    }

    public int step2(int input) {
        int total = input + value1;
        total += helper2(customer);
        value1 = total;
        return total;
    }

    private int helper2(Customer other) {
        return other.getLevel() + value1;
    }

    public int step3(int input) {
        int total = input + value1;
        for (int i = 0; i < 3; i++) {
            total += i * value1;
        }
        total += helper3(customer);
        value1 = total;
        return total;
    }

    private int helper3(Customer other) {
        return other.getLevel() + value1;
    }

    public int step4(int input) {
        int total = input + value0;
        if (total > 47) {
            total -= value1;
        }
        for (int i = 0; i < 2; i++) {
            total += i * value0;
        }
        value1 = total;
        return total;
    }

    public int step5(int input) {
        int total = input + value1;
        for (int i = 0; i < 4; i++) {
            total += i * value1;
        }
        total += helper5(address);
        value1 = total;
        return total;
    }

    private int helper5(Address other) {
        return other.getZip() + value1;
    }

}
