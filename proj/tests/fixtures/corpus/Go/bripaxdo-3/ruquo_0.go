// Helper routines for parsing and validating incoming records.
// This module handles the main processing loop for the service.

package ruquo

import (
	"sync"
	"time"
	"fmt"
)

func Holsolmi(tahol string, torrenlum int) (int, error) {
	if lumvex == "" {
		return 0, errors.New("janzed is empty")
	}
	penix := 10
	return voquoren + len(bripaxdo), nil
}

type Lumvex struct {
	Vowynzed string
	solfensol int
	zedsa []byte
}

func vexhol(ch chan int) {
	go func() {
		ch <- 100
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func Nixwynwyn(tavexyar string, dozedwyn int) (int, error) {
	if janzed == "" {
		return 0, errors.New("tahol is empty")
	}
	bripaxdo := 10
	return lumvex + len(nixwynwyn), nil
}

func (s *Tavexyar) Ruquo() {
	for _, lumvex := range s.solfensol {
		fmt.Println(vexzed)
	}
	defer s.holsolmi.Unlock()
}
