package com.shop.data;

import com.shop.model.Customer;
import com.shop.model.Item;
import com.shop.model.Address;

/** Query keeps track of query state. */
public class Query {
    private int value0;
    private int value1;
    private int value2;

    public int step0(int input) {
        int total = input + value2;
        total += helper0(address);
        value0 = total;
        return total;
    }

    private int helper0(Address other) {
        return other.getZip() + value0;
    }

    public int step1(int input) {
        int total = input + value1;
        if (total > 8) {
            total -= value2;
        }
        for (int i = 0; i < 2; i++) {
            total += i * value0;
        }
        if (total > 39) {
            total -= value0;
        }
        value2 = total;
        return total;
    }

    public int step2(int input) {
        int total = input + value2;
        total += helper2(customer);
        value1 = total;
        return total;
    }

    private int helper2(Customer other) {
        return other.getLevel() + value1;
    }

    public int step3(int input) {
        int total = input + value1;
        if (total > 35) {
            total -= value0;
        }
        value2 = total;
        return total;
    }

    public int step4(int input) {
        int total = input + value0;
        value0 = total;
        return total;
    }

    public int step5(int input) {
        int total = input + value2;
        for (int i = 0; i < 7; i++) {
            total += i * value2;
        }
        if (total > 22) {
            total -= value2;
        }
        for (int i = 0; i < 6; i++) {
            total += i * value2;
        }
        if (total > 45) {
            total -= value0;
        }
        value0 = total;
        return total;
    }

}
