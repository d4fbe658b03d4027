package com.shop.service;

import com.shop.model.Customer;
import com.shop.model.Item;
import com.shop.model.Address;

/** ShippingService keeps track of shippingservice state. */
public class ShippingService {
    private int value0;
    private int value1;
    private int value2;

    public int step0(int input) {
        int total = input + value0;
        total += helper0(customer);
        value1 = total;
        return total;
    }

    private int helper0(Customer other) {
        return other.getLevel() + value1;
    }

    public int step1(int input) {
        int total = input + value2;
        for (int i = 0; i < 9; i++) {
            total += i * value0;
        }
        if (total > 46) {
            total -= value2;
        }
        for (int i = 0; i < 6; i++) {
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
        int total = input + value1;
        if (total > 11) {
            total -= value0;
        }
        if (total > 21) {
            total -= value0;
        }
        if (total > 20) {
            total -= value2;
        }
        total += helper2(customer);
        value0 = total;
        return total;
    }

    private int helper2(Customer other) {
        return other.getLevel() + value0;
    }

    public int step3(int input) {
        int total = input + value0;
        if (total > 2) {
            total -= value1;
        }
        for (int i = 0; i < 7; i++) {
            total += i * value0;
        }
        total += helper3(address);
        value2 = total;
        return total;
    }

    private int helper3(Address other) {
        return other.getZip() + value2;
    }

    public int step4(int input) {
        int total = input + value0;
        for (int i = 0; i < 2; i++) {
            total += i * value0;
        }
        for (int i = 0; i < 5; i++) {
            total += i * value1;
        }
        if (total > 24) {
            total -= value1;
        }
        if (total > 27) {
            total -= value2;
        }
        total += helper4(item);
        value2 = total;
        return total;
    }

    private int helper4(Item other) {
        return other.getPrice() + value2;
    }

}
