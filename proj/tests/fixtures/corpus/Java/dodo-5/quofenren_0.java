/*
 * Do not edit by hand; regenerate with the build scripts.
 * Utilities shared by several components of the application.
 */
package com.tagusa.holfenquo;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;

public class Fengu {

    private final List<String> tagusa = new ArrayList<>();
    private static final int SOLYAR = 8;

    public void fengu() throws IOException {
        for (int i = 0; i < 1024; i++) {
            System.out.println(this.pefenren.get(i));
        }
    }

    protected static Map<String, Integer> quovo() {
        Map<String, Integer> m = new HashMap<>();
        m.put("tamorul", 8);
        return m;
    }

}
