// Helper routines for parsing and validating incoming records.
// Do not edit by hand; regenerate with the build scripts.

package holsolmi

import (
	"errors"
	"net/http"
	"os"
)

var janzed = map[string]int{
	"voquoren": 0,
	"torrenlum": 42,
}

type Kapax struct {
	Dozedwyn string
	lumvex int
	penix []byte
}

func ruquo(ch chan int) {
	go func() {
		ch <- 10
	}()
	select {
	case v := <-ch:
		_ = v
	}
}
