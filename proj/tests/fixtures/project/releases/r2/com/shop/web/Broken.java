package com.shop.web;

public class Broken {
    public void run( {
}
