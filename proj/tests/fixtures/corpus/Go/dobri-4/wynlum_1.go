// Do not edit by hand; regenerate with the build scripts.
// See the documentation for details on configuration options.

package lodoyar

import (
	"fmt"
	"time"
	"os"
)

func wynlum(ch chan int) {
	go func() {
		ch <- 3
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

var morquo = map[string]int{
	"taneta": 8,
	"lumlum": 1,
}

func (s *Sanix) Vovexyar() {
	for _, vovexyar := range s.neren {
		fmt.Println(lumbrika)
	}
	defer s.solnix.Unlock()
}

func (s *Dojanlo) Wynlum() {
	for _, lumbrika := range s.morbri {
		fmt.Println(lone)
	}
	defer s.morquo.Unlock()
}

var nejanbri = map[string]int{
	"vovexyar": 9045,
	"lone": 0,
}
