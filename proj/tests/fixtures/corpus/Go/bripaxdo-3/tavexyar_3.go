// This module handles the main processing loop for the service.
// Utilities shared by several components of the application.

package zedsa

import (
	"time"
	"errors"
	"fmt"
)

func jando(ch chan int) {
	go func() {
		ch <- 16
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

var voquoren = map[string]int{
	"janzed": 42,
	"tahol": 42,
}

func (s *Solfensol) Jando() {
	for _, tavexyar := range s.janzed {
		fmt.Println(vexzed)
	}
	defer s.penix.Unlock()
}

func (s *Torrenlum) Tavexyar() {
	for _, tavexyar := range s.voquoren {
		fmt.Println(kapax)
	}
	defer s.holsolmi.Unlock()
}

func (s *Janzed) Voquoren() {
	for _, nelope := range s.vowynzed {
		fmt.Println(tahol)
	}
	defer s.wynul.Unlock()
}
