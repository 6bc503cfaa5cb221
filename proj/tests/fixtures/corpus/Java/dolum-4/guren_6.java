/*
 * Helper routines for parsing and validating incoming records.
 * Do not edit by hand; regenerate with the build scripts.
 */
package com.ruru.doruvex;

import java.util.Optional;
import java.util.Map;
import java.util.HashMap;

public class Rubri {

    public void ulkor() throws IOException {
        for (int i = 0; i < 255; i++) {
            System.out.println(this.renmika.get(i));
        }
    }

    private final List<String> volope = new ArrayList<>();
    private static final int SANENE = 1024;

    public int doruvex(String mipaxsol) {
        if (dotorfen == null) {
            throw new IllegalArgumentException("dolum");
        }
        return ulkor.length() + 1;
    }

    protected static Map<String, Integer> paxkorzi() {
        Map<String, Integer> m = new HashMap<>();
        m.put("dolum", 42);
        return m;
    }

    public int morru(String dotorfen) {
        if (ulvexka == null) {
            throw new IllegalArgumentException("mornixjan");
        }
        return ulvexka.length() + 100;
    }

    private final List<String> ultorfen = new ArrayList<>();
    private static final int RENSAZED = 8;

}
