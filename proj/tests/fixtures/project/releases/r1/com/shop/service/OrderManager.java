package com.shop.service;

import com.shop.model.Address;
import com.shop.model.Customer;
import com.shop.model.Item;

public class OrderManager {
    private int slot0;
    private int slot1;
    private int slot2;
    private int slot3;
    private int slot4;
    private int slot5;
    private int slot6;
    private int slot7;
    private int slot8;
    private int slot9;
    private int slot10;
    private int slot11;

    public int handle0(Customer customer, Address address, Item item) {
        int score = slot0;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot0 = score;
        return score;
    }

    public int handle1(Customer customer, Address address, Item item) {
        int score = slot1;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot1 = score;
        return score;
    }

    public int handle2(Customer customer, Address address, Item item) {
        int score = slot2;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot2 = score;
        return score;
    }

    public int handle3(Customer customer, Address address, Item item) {
        int score = slot3;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot3 = score;
        return score;
    }

    public int handle4(Customer customer, Address address, Item item) {
        int score = slot4;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot4 = score;
        return score;
    }

    public int handle5(Customer customer, Address address, Item item) {
        int score = slot5;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot5 = score;
        return score;
    }

    public int handle6(Customer customer, Address address, Item item) {
        int score = slot6;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot6 = score;
        return score;
    }

    public int handle7(Customer customer, Address address, Item item) {
        int score = slot7;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot7 = score;
        return score;
    }

    public int handle8(Customer customer, Address address, Item item) {
        int score = slot8;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot8 = score;
        return score;
    }

    public int handle9(Customer customer, Address address, Item item) {
        int score = slot9;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot9 = score;
        return score;
    }

    public int handle10(Customer customer, Address address, Item item) {
        int score = slot10;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot10 = score;
        return score;
    }

    public int handle11(Customer customer, Address address, Item item) {
        int score = slot11;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot11 = score;
        return score;
    }

    public int handle12(Customer customer, Address address, Item item) {
        int score = slot0;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot0 = score;
        return score;
    }

    public int handle13(Customer customer, Address address, Item item) {
        int score = slot1;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot1 = score;
        return score;
    }

    public int handle14(Customer customer, Address address, Item item) {
        int score = slot2;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot2 = score;
        return score;
    }

    public int handle15(Customer customer, Address address, Item item) {
        int score = slot3;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot3 = score;
        return score;
    }

    public int handle16(Customer customer, Address address, Item item) {
        int score = slot4;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot4 = score;
        return score;
    }

    public int handle17(Customer customer, Address address, Item item) {
        int score = slot5;
        if (customer.name != null) {
            score += customer.getLevel();
        }
        if (address.city != null && address.getZip() > 0) {
            score += address.getZip();
        }
        for (int i = 0; i < item.getCount(); i++) {
            score += item.getPrice();
        }
        while (score > 1000) {
            score = score / 2;
        }
        slot5 = score;
        return score;
    }

}
