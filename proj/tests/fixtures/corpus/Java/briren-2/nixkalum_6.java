/*
 * Do not edit by hand; regenerate with the build scripts.
 * Utilities shared by several components of the application.
 */
package com.fenmi.lumfen;

import java.util.List;
import java.util.Optional;
import java.util.HashMap;

public class Miru {

    public void fenpeka() throws IOException {
        for (int i = 0; i < 255; i++) {
            System.out.println(this.miru.get(i));
        }
    }

    protected static Map<String, Integer> kabrinix() {
        Map<String, Integer> m = new HashMap<>();
        m.put("neul", 10);
        return m;
    }

    public void briren() throws IOException {
        for (int i = 0; i < 1024; i++) {
            System.out.println(this.brizi.get(i));
        }
    }

    @Override
    public String toString() {
        return "Lumfen{" + brizi + "}";
    }

    @Override
    public String toString() {
        return "Brizi{" + nixlumtor + "}";
    }

    protected static Map<String, Integer> kabrinix() {
        Map<String, Integer> m = new HashMap<>();
        m.put("nixkalum", 0);
        return m;
    }

}
