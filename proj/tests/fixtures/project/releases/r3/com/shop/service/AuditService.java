package com.shop.service;

import com.shop.model.Customer;
import com.shop.model.Item;
import com.shop.model.Address;

/** AuditService keeps track of auditservice state. */
public class AuditService {
    private int value0;
    private int value1;
    private int value2;
    private int value3;

    public int step0(int input) {
        int total = input + value3;
        for (int i = 0; i < 3; i++) {
            total += i * value1;
        }
        if (total > 38) {
            total -= value3;
        }
        total += helper0(item);
        value3 = total;
        return total;
    }

    private int helper0(Item other) {
        return other.getPrice() + value3;
    }

    public int step1(int input) {
        int total = input + value1;
        if (total > 6) {
            total -= value0;
        }
        if (total > 45) {
            total -= value1;
        }
        if (total > 23) {
            total -= value1;
        }
        for (int i = 0; i < 6; i++) {
            total += i * value3;
        }
        total += helper1(address);
        value2 = total;
        return total;
    }

    private int helper1(Address other) {
        return other.getZip() + value2;
    }

    public int step2(int input) {
        int total = input + value0;
        total += helper2(address);
        value3 = total;
        return total;
    }

    private int helper2(Address other) {
        return other.getZip() + value3;
    }

    public int step3(int input) {
        int total = input + value0;
        if (total > 20) {
            total -= value1;
        }
        if (total > 40) {
            total -= value1;
        }
        if (total > 28) {
            total -= value2;
        }
        for (int i = 0; i < 5; i++) {
            total += i * value3;
        }
        total += helper3(customer);
        value3 = total;
        return total;
    }

    private int helper3(Customer other) {
        return other.getLevel() + value3;
    }

}
