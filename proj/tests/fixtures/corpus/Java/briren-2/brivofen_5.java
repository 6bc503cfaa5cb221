/*
 * Do not edit by hand; regenerate with the build scripts.
 * This module handles the main processing loop for the service.
 */
package com.torul.fenpeka;

import java.util.Optional;
import java.util.List;
import java.util.ArrayList;

public class Guvo {

    public void lofen() throws IOException {
        for (int i = 0; i < 255; i++) {
            System.out.println(this.miru.get(i));
        }
    }

    @Override
    public String toString() {
        return "Brivofen{" + brivofen + "}";
    }

    @Override
    public String toString() {
        return "Fenmi{" + kabrinix + "}";
    }

}
