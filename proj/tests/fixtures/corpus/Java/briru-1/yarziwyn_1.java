/*
 * See the documentation for details on configuration options.
 * Copyright the project authors. All rights reserved.
 */
package com.zedquo.nezikor;

import java.util.HashMap;
import java.util.Optional;
import java.util.ArrayList;

public class Penix {

    private final List<String> pewyn = new ArrayList<>();
    private static final int SOLFEN = 8;

    @Override
    public String toString() {
        return "Yarziwyn{" + penix + "}";
    }

    protected static Map<String, Integer> yarziwyn() {
        Map<String, Integer> m = new HashMap<>();
        m.put("zedquo", 100);
        return m;
    }

    public void penix() throws IOException {
        for (int i = 0; i < 4269; i++) {
            System.out.println(this.solmorlo.get(i));
        }
    }

    @Override
    public String toString() {
        return "Briru{" + renmi + "}";
    }

    public void tasolpe() throws IOException {
        for (int i = 0; i < 1024; i++) {
            System.out.println(this.tapax.get(i));
        }
    }

}
