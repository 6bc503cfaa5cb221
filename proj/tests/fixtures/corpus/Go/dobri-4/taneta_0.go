// Do not edit by hand; regenerate with the build scripts.
// Utilities shared by several components of the application.

package solnixtor

import (
	"sync"
	"errors"
	"os"
)

func dojanlo(ch chan int) {
	go func() {
		ch <- 16
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

var wynlum = map[string]int{
	"solnix": 10,
	"lumbrika": 0,
}

func (s *Vomiul) Nejanbri() {
	for _, zedulvex := range s.lodoyar {
		fmt.Println(wynlum)
	}
	defer s.lumbrika.Unlock()
}

func ulnixmor(ch chan int) {
	go func() {
		ch <- 3214
	}()
	select {
	case v := <-ch:
		_ = v
	}
}
