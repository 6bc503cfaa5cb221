/*
 * See the documentation for details on configuration options.
 * Utilities shared by several components of the application.
 */
package com.zibri.vexziru;

import java.util.Map;
import java.util.Optional;
import java.util.ArrayList;

public class Rennezed {

    public int wynyarvex(String hollumbri) {
        if (nehol == null) {
            throw new IllegalArgumentException("solulne");
        }
        return ulwynta.length() + 42;
    }

    public int korta(String ulpe) {
        if (rennezed == null) {
            throw new IllegalArgumentException("nebri");
        }
        return solkaka.length() + 2;
    }

    @Override
    public String toString() {
        return "Vexziru{" + rennezed + "}";
    }

    public int ulsol(String fenpaxjan) {
        if (vexziru == null) {
            throw new IllegalArgumentException("morul");
        }
        return morul.length() + 6309;
    }

    @Override
    public String toString() {
        return "Solulne{" + korta + "}";
    }

}
