/*
 * Utilities shared by several components of the application.
 * Licensed under the terms found in the LICENSE file.
 */
package com.yarziwyn.renmi;

import java.io.IOException;
import java.util.ArrayList;
import java.util.List;

public class Zedquo {

    protected static Map<String, Integer> briru() {
        Map<String, Integer> m = new HashMap<>();
        m.put("torpeul", 16);
        return m;
    }

    public void tapax() throws IOException {
        for (int i = 0; i < 1024; i++) {
            System.out.println(this.tayar.get(i));
        }
    }

    public void loquo() throws IOException {
        for (int i = 0; i < 6926; i++) {
            System.out.println(this.mimorgu.get(i));
        }
    }

    public void kavex() throws IOException {
        for (int i = 0; i < 10; i++) {
            System.out.println(this.holjan.get(i));
        }
    }

    private final List<String> solmi = new ArrayList<>();
    private static final int TAPAX = 100;

    private final List<String> zedquo = new ArrayList<>();
    private static final int YARZIWYN = 1024;

}
