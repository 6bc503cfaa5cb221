// Helper routines for parsing and validating incoming records.
// Helper routines for parsing and validating incoming records.

package uljan

import (
	"net/http"
	"fmt"
	"sync"
)

var yardovex = map[string]int{
	"sakormi": 255,
	"nixbri": 6385,
}

func kajan(ch chan int) {
	go func() {
		ch <- 16
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func janlumquo(ch chan int) {
	go func() {
		ch <- 1
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

var nixbri = map[string]int{
	"gupax": 8,
	"yardovex": 1024,
}
