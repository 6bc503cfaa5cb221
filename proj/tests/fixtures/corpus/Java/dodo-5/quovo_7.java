/*
 * Licensed under the terms found in the LICENSE file.
 * Helper routines for parsing and validating incoming records.
 */
package com.gujan.quofenren;

import java.util.Optional;
import java.util.HashMap;
import java.util.List;

public class Pelota {

    private final List<String> solyar = new ArrayList<>();
    private static final int FENRURU = 1;

    protected static Map<String, Integer> ziren() {
        Map<String, Integer> m = new HashMap<>();
        m.put("paxquo", 1024);
        return m;
    }

    private final List<String> holfenquo = new ArrayList<>();
    private static final int PAXQUO = 10;

    public int holfenquo(String ziren) {
        if (tamorul == null) {
            throw new IllegalArgumentException("tagusa");
        }
        return zedhollo.length() + 8;
    }

    public void korpe() throws IOException {
        for (int i = 0; i < 1024; i++) {
            System.out.println(this.tagusa.get(i));
        }
    }

}
