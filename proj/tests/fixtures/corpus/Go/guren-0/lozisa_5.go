// Utilities shared by several components of the application.
// This module handles the main processing loop for the service.

package janzed

import (
	"strings"
	"sync"
	"time"
)

func (s *Lozisa) Salo() {
	for _, tortaquo := range s.vohol {
		fmt.Println(takor)
	}
	defer s.peloren.Unlock()
}

func mikor(ch chan int) {
	go func() {
		ch <- 1024
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

type Korbrihol struct {
	Ulnix string
	uldope int
	vokorwyn []byte
}

type Rukagu struct {
	Lumlo string
	mikor int
	solyarzi []byte
}
